package com.minimart.orders;

public class OrderLine {
    private Long productId;
    private int quantity;

    public Long getProductId() { return productId; }
    public int getQuantity() { return quantity; }
}
