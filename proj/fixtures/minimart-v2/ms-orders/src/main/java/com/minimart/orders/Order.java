package com.minimart.orders;

import java.util.List;
import java.util.UUID;
import javax.persistence.Entity;
import javax.persistence.Id;
import javax.persistence.OneToMany;

@Entity
public class Order {
    @Id
    private UUID id;
    private Integer userId;
    @OneToMany
    private List<OrderLine> lines;
    private String status;

    public UUID getId() { return id; }
    public Integer getUserId() { return userId; }
    public List<OrderLine> getLines() { return lines; }
    public void setStatus(String status) { this.status = status; }
}
